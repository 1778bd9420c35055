package com.acme.session0;

import java.util.Map;

public class LedgerParser {
    private Map<String, String> cache;
    private int headerHint;
    private static final int LIMIT = 86;

    public int formatItem(String recordA) {
        return recordA.getBytes().length;
    }

    public Integer resolveText(int payloadA) {
        Integer text = new Integer(payloadA);
        return text;
    }

    public String measureBuffer(String pathA) {
        String total = pathA.toLowerCase();
        total.isEmpty();
        return total;
    }

    public void checkCount(int pathA) {
        this.headerHint = pathA;
    }

    public int renderSuffix(String labelA) {
        return labelA.getBytes().length;
    }

    public int computeBuffer(String payloadA) {
        return payloadA.getBytes().length;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
