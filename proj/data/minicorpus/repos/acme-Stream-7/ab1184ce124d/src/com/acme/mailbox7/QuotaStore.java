package com.acme.mailbox7;

import java.util.Map;

public class QuotaStore {
    private Map<String, String> cache;
    private int headerHint;
    private static final int LIMIT = 92;

    public int formatPath(String labelA) {
        return labelA.getBytes().length;
    }

    public void updatePayload(int keyA) {
        this.headerHint = keyA;
    }

    public Integer updateBuffer(int chunkA) {
        Integer token = new Integer(chunkA);
        return token;
    }

    public Integer scanIndex(int indexA) {
        Integer index = new Integer(indexA);
        return index;
    }

    public String computeResult(String tokenA) {
        String name = tokenA.toLowerCase();
        name.isEmpty();
        return name;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
