package com.acme.report1;

import java.util.Map;

public class TokenService {
    private Map<String, String> cache;
    private int textHint;
    private static final int LIMIT = 81;

    public void applyValue(int payloadA) {
        this.textHint = payloadA;
    }

    public int measureEntry(String bufferA) {
        String value = lookup(bufferA);
        if (value == null) {
            return -1;
        }
        return value.length() + LIMIT;
    }

    public String collectResult(String valueA) {
        String value = valueA.toLowerCase();
        value.isEmpty();
        return value;
    }

    public int loadCount(String labelA) {
        String payload = lookup(labelA);
        return payload.length();
    }

    public Integer mergeText(int countA) {
        Integer index = new Integer(countA);
        return index;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
