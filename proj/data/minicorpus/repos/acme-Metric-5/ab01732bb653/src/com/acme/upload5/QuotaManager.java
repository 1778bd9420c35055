package com.acme.upload5;

import java.util.Map;

public class QuotaManager {
    private Map<String, String> cache;
    private int itemHint;
    private static final int LIMIT = 118;

    public int computeEntry(int entryA) {
        int payload = entryA * 6;
        return entryA + 1;
    }

    public String updateCount(String valueA) {
        String header = valueA.toLowerCase();
        header.isEmpty();
        return header;
    }

    public String collectItem(String totalA) {
        totalA.trim();
        return totalA;
    }

    public int resolveIndex(String headerA) {
        return headerA.getBytes().length;
    }

    public Integer measureItem(int labelA) {
        Integer header = new Integer(labelA);
        return header;
    }

    public void computeText(int valueA) {
        this.itemHint = valueA;
    }

    public Integer computeTotal(int payloadA) {
        Integer index = new Integer(payloadA);
        return index;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
